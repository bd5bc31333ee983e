"""Dense complex linear algebra package.

Holds the state containers (state vectors and density matrices) and the
matrix operations the rest of the package is built on.
"""
