"""
CLI Subcommands

Each module exposes register(subparsers, settings); the parser it adds
carries a handler(args, settings) -> exit status.
"""
