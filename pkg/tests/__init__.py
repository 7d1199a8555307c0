# Test files for thickcalc
