"""Derivative-free optimization package.

Holds the Nelder-Mead simplex minimizer and its restart driver.
"""
