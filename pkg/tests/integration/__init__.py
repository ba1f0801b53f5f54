"""Integration tests for cutpoly."""
