"""Tests for symdeform."""
