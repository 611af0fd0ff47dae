"""Abstract Hardy inequalities on finite measure spaces with ordered cores."""
