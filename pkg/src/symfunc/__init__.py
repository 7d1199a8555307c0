# Partitions, Schur polynomials, Littlewood-Richardson coefficients and quantum integers
