"""
Render package
Contains ASCII, SVG and TikZ drawings of periodic decompositions
"""
