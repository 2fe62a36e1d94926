"""Skew Schur function expansions, Schur intervals and their classifiers."""
