"""Test suite for the face-numbers toolkit."""
