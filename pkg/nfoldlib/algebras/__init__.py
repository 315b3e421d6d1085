"""Algebra descriptions shipped with `nfoldlib`; see ``quiverlang.load_algebra``."""
