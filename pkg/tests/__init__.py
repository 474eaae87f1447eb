"""
Test suite for walkrecon

- Unit tests for individual modules
- Integration tests comparing the simulator, the boundary-value solve and the closed forms
"""
