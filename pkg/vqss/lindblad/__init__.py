"""Lindblad dynamics package.

Holds the model builders (Ising, XYZ and custom spin chains with per-site
lowering dissipation), the Liouvillian in direct and superoperator form, and
the exact and time-evolution steady-state oracles.
"""
