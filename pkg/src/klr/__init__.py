# Thin KLR diagrams: reduction to normal form and the polynomial-representation oracle
