"""Variational stationary state package.

Holds the purification ansatz, the Liouvillian loss, the state fidelity and
the optimize-with-restarts solver.
"""
