"""Unit tests for cutpoly."""
