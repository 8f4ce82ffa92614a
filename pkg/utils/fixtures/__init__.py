"""
Fixtures package for the fcwf tests
"""
