"""Custom errors package.

The package contains the custom exceptions raised by the vqss package. They
all inherit from VqssException so callers can catch the whole family.
"""
