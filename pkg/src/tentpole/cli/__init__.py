"""Command-line interface for Tentpole."""
