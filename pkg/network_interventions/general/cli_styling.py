import sys
from dataclasses import dataclass, fields


@dataclass
class Color:
    """ Terminal colors for the CLI summaries and debugging output """
    reset: str = '\033[0m'
    # Foreground colors
    fg_black: str = '\033[30m'
    fg_red: str = '\033[31m'
    fg_green: str = '\033[32m'
    fg_yellow: str = '\033[33m'
    fg_cyan: str = '\033[36m'
    # Background colors
    bg_yellow: str = '\033[43m'

    def __getattr__(self, item):
        expected_fields = [f.name for f in fields(self)]
        if item not in expected_fields:
            raise AttributeError(f'Provided color does not exist: {item}')
        return getattr(self, item)


@dataclass
class Symbol:
    arrow_r: str = '→'
    line: str = '━'
    warning: str = '⚠️'
    fail: str = '🚫'


def color_print(*args, fg=None, bg=None, file=None):
    """ Prints arguments in the specified foreground/background color.

    Args:
        fg (str): The foreground color to print
        bg (str): The background color to print
        file: The stream to print to; defaults to stderr so stdout stays machine readable
    """
    file = file or sys.stderr
    if not fg and not bg:
        print(*args, file=file)
        return None

    c = Color()
    style = ''.join([getattr(c, f'{k}_{v}') for k, v in {'fg': fg, 'bg': bg}.items() if v])
    print(f'{style}{" ".join(str(a) for a in args)}{c.reset}', file=file)


def print_title(title, sub_title=None, fg='green'):
    """ Prints a title bar, and an optional highlighted sub title, to stderr

    Returns: The printed title, so the caller can close it with print_rule()
    """
    color = Color()
    color_print(title, fg=fg)
    if sub_title:
        print(f'{color.fg_black}{color.bg_yellow}{sub_title}{color.reset}', file=sys.stderr)
    return title


def print_rule(title, fg='green'):
    """ Prints a closing line as wide as the title """
    color_print(Symbol().line * len(title), fg=fg)
    print(file=sys.stderr)
