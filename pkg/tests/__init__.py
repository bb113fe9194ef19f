"""Tests for toric-qh."""
