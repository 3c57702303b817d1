"""
Constructor package
Contains the quotient lift, induction steps, bounded search and the planner
"""
