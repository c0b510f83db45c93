"""
Command line surface over the service layer
"""
from app.cli.main import build_parser, main

__all__ = ["build_parser", "main"]
