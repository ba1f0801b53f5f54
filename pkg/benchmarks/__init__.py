"""Benchmarks for cutpoly."""
