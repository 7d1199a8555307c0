# Splitter cache file
