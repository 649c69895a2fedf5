"""Tests for Tentpole."""
