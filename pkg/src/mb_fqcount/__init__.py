"""Exact solution counts for diagonal, Carlitz-type and quasi-homogeneous equations over finite fields."""
