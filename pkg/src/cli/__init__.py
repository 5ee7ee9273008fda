"""
Command-line front end: commands plus their JSON report models.
"""
