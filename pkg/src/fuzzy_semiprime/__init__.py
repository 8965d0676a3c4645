"""Fuzzy semiprime subsets of finite ordered groupoids."""
