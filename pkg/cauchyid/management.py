from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals

import importlib
import inspect
import os
import sys

from cauchyid.cli import (EXIT_INPUT_ERROR, EXIT_OK, EXIT_VIOLATION,
                          INPUT_ERRORS)
from cauchyid.logging import logger, setup_log
from cauchyid.reports import all_passed, write_reports


def execute_from_command_line(argv=None):
    manager = Manager(argv)
    sys.exit(manager.execute())


def command_name(module_name):
    """Subcommands are spelt with hyphens, their modules with underscores"""
    return module_name.replace('_', '-')


def _write(config, outputs):
    if config.output:
        with open(config.output, 'w') as f:
            write_reports(outputs, config.output_format, f)
    else:
        write_reports(outputs, config.output_format, sys.stdout)


def run(config, execute):
    """Runs execute(config), writes its reports and maps the outcome to an
    exit status: 0 when every report passes, 1 on any identity violation,
    2 on bad input"""
    setup_log(config.settings)
    log = logger()
    log.info("Running {}".format(config.command))
    try:
        outputs = list(execute(config))
        _write(config, outputs)
    except INPUT_ERRORS as e:
        log.error("{}: {}".format(type(e).__name__, e))
        print("error: {}".format(e), file=sys.stderr)
        return EXIT_INPUT_ERROR

    if all_passed(outputs):
        return EXIT_OK
    log.error("{} identity violation(s)".format(
        sum(1 for output in outputs if not getattr(output, 'passed', True))))
    return EXIT_VIOLATION


class Manager(object):

    def __init__(self, argv=None):
        self.commands = {}

        # Look for commands in the commands sub-directory
        commands_dir = os.path.join(os.path.dirname(__file__), "commands")
        for f in os.listdir(commands_dir):
            module_name = inspect.getmodulename(f)
            if not module_name or module_name.startswith('_'):
                continue
            # Try to locate a main() function in the current file
            try:
                module = importlib.import_module("cauchyid.commands.{}"
                                                 .format(module_name))
                self.commands[command_name(module_name)] = module.main
            except (ImportError, AttributeError):
                pass

        # Get any available arguments
        self.argv = argv or sys.argv

    def execute(self):
        try:
            command = self.commands[self.argv[1]]
        except (IndexError, KeyError):
            self.help()
            return EXIT_INPUT_ERROR
        return command(self.argv[2:])

    def help(self):
        print("Usage: {} subcommand [options] [args]"
              .format(os.path.basename(self.argv[0])))
        print("Available subcommands:")
        print()
        for command in sorted(self.commands):
            print("    {}".format(command))
