# Thick strands, splitters and their compilation to thin diagrams
