"""Betti numbers of edge ideals via Hochster's formula, with family constructors and verifiers."""
