"""Nested almost convex point sets: generation, recognition and brute-force checks."""
