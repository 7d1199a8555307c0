# thickcalc: exact engine for the thick calculus of categorified quantum sl(n)
