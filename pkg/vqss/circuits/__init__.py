"""Statevector circuit package.

Holds the single-qubit rotations, the controlled-RY entangler and the layered
ansatz circuit used to build purifications.
"""
