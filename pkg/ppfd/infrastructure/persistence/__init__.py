"""
File Repository Implementations

CSV series, JSON reports and JSON model documents.
"""
