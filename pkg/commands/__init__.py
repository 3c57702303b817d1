"""
Command handlers package
Contains one handler class per CLI subcommand
"""
