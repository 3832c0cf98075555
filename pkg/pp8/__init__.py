"""Degree-8 permutation polynomials over GF(2^r): arithmetic, Hermite engine, classification and proof replay."""
