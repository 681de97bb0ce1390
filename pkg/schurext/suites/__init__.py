"""Verification suites run by the engine (see registry.SUITES)."""
