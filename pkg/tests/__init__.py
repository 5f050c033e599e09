"""DEA-LCS tests."""
