"""
Base interface for all analysis results.

Every stage of the pipeline returns a result object implementing this
interface, so the command processor can collect warnings and serialize any
result generically.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List


class BaseResult(ABC):
    """Base interface for all analysis results."""

    @abstractmethod
    def get_warnings(self) -> List[str]:
        """
        Get warnings that should be surfaced in the report.

        Returns:
            List of human-readable warning strings (empty when clean)
        """
        pass

    @abstractmethod
    def get_summary(self) -> str:
        """
        Get a one-line summary for text output.

        Returns:
            Summary text
        """
        pass

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        """
        Convert result to dictionary for serialization.

        Rationals are rendered as strings.

        Returns:
            Dictionary representation of the result
        """
        pass
