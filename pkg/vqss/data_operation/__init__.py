"""
The data_operation package.

Reads experiment configs and writes the run outputs: traces, density
matrices, summaries and heatmaps.
"""
