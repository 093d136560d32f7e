#!/usr/bin/env python3

import sys

from ..setup_logger import logger
from ..errors import FreeMcgError
from .script import Script

class FreeMcg(Script):
    """
    Entry point of the `freemcg` command line tool.
    """

    def __init__(self, logging_enabled=True):
        super().__init__(logging_enabled=logging_enabled)
        self.subcommand = None

    def validate(self):
        self.subcommand = self.create_command(self.parser_configurations[self.command])
        self.subcommand.init_from_args(self, self.args)
        self.subcommand.validate()

    def run(self):
        self.outputs.extend(self.subcommand.run())

def main(argv=None):
    script = FreeMcg()
    try:
        script.execute(argv)
    except FreeMcgError as ex:
        logger.error(str(ex))
        return ex.exit_code
    return 0

if __name__ == "__main__":
    sys.exit(main())
