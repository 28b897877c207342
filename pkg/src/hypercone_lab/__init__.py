"""Numerical toolkit for the analysis of stable minimal hypercones in R^8.

Subpackages cover cross-section spectra and indicial exponents (`cones`),
weighted growth functionals, discriminants and radial Jacobi solves
(`growth`), the flat graph model with its area density and linearization
checks (`graphs`), decomposition-tree combinatorics with closeness
predicates, coverings and the singular-capacity recursion (`trees`), plus
file formats (`fileio`) and a batch CLI (`cli`).
"""

from . import cones, fileio, graphs, growth, trees

__all__ = ["cones", "growth", "graphs", "trees", "fileio"]
__version__ = "0.1.0"
