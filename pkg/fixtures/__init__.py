"""
Fixtures package
Contains the committed figure patterns and their stored verdicts
"""
