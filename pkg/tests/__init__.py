"""Tests package for quintary-lattice."""
