"""
Core command processing for hermspec.
"""

from hermspec.core.processor import CommandProcessor, charpoly_of_input, moments_of_input

__all__ = ['CommandProcessor', 'charpoly_of_input', 'moments_of_input']
