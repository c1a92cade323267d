"""Quintary lattice maps, their hexad semigroups and the arithmetic case."""
