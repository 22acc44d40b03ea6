#!/usr/bin/env python
"""Django administration plus the stablegb subcommands with their exit codes."""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'stablegb.settings')
    from stablegb.cli import SUBCOMMANDS, main as stablegb_main

    if len(sys.argv) > 1 and sys.argv[1] in SUBCOMMANDS:
        sys.exit(stablegb_main(sys.argv[1:]))
    from django.core.management import execute_from_command_line
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
