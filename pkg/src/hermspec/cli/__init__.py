"""
CLI module for hermspec using Typer.

This module provides the command-line interface: one command per analysis
stage plus a config command.
"""

from hermspec.cli.app import app
from hermspec.cli.commands import config_command, main

__all__ = ['app', 'main', 'config_command']
