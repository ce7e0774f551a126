"""Chip-firing divisor theory and Brill-Noether checks on trivalent graphs."""
