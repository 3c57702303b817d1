"""
Verifier package
Contains the winding classifier, prevalence checks and brute-force oracles
"""
