"""Extended tests for cutpoly."""
