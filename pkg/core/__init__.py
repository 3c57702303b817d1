"""
Core package
Contains G_{k,l} arithmetic, isomorphisms, lattices and periodic edge sets
"""
