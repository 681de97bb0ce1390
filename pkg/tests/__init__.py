# Tests for schurext
