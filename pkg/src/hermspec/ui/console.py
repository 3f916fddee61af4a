"""
Rich console singletons for consistent terminal output across the application.

Reports go to stdout through `console`; status lines and error panels go to
stderr through `err_console`, so piped JSON stays clean.
"""

from rich.console import Console
from rich.theme import Theme

custom_theme = Theme({
    "info": "cyan",
    "warning": "yellow",
    "error": "bold red",
    "success": "bold green",
    "rational": "bold blue",
    "poly": "magenta",
    "verdict.true": "green",
    "verdict.false": "red",
    "advisory": "dim yellow",
})

console = Console(theme=custom_theme, width=120)
err_console = Console(theme=custom_theme, width=120, stderr=True)
