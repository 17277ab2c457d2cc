from __future__ import absolute_import

import logging
import inspect
from functools import wraps


def logger():
    """Returns a Logger object with path equal to the module, class and
    function in which this function is called"""

    stack = inspect.stack()
    # Move up the stack, looking for the function that called this function
    # We ignore functions that start with _ to circumvent decorators
    for frame_info in stack[1:]:
        if not frame_info.function.startswith("_"):
            break
    frame = frame_info.frame

    try:
        names = [inspect.getmodule(frame).__name__]
    except AttributeError:
        names = []
    try:
        names.append(frame.f_locals['self'].__class__.__name__)
    except KeyError:
        pass
    names.append(frame_info.function)
    return logging.getLogger(".".join(names))


def setup_log(config):
    """Installs console and file handlers on the root logger as described by
    the LOGGING_* settings of config"""
    log = logging.getLogger()
    log.handlers = []
    log.setLevel(config.LOGGING_LEVEL)
    formatter = logging.Formatter(config.LOGGING_FORMAT,
                                  config.LOGGING_DATEFMT)
    if config.LOGGING_CONSOLE:
        # StreamHandler defaults to stderr, stdout carries the reports
        ch = logging.StreamHandler()
        ch.setLevel(config.LOGGING_LEVEL)
        ch.setFormatter(formatter)
        log.addHandler(ch)
    if config.LOGGING_FILE:
        fh = logging.FileHandler(config.LOGGING_FILE)
        fh.setLevel(config.LOGGING_LEVEL)
        fh.setFormatter(formatter)
        log.addHandler(fh)
    return log


class _Log(object):
    def __init__(self, message=None, ignore=()):
        self.init_message = message
        self.ignore = tuple(ignore) + ("self",)

    def __call__(self, f):

        signature = inspect.signature(f)

        @wraps(f)
        def _wrapper(*args, **kwargs):
            log = logging.getLogger("{}.{}".format(f.__module__,
                                                   f.__name__))

            if self.init_message:
                log.info(self.init_message)

            bound = signature.bind(*args, **kwargs)
            bound.apply_defaults()
            self.print_args(bound.arguments.items(), log)

            return f(*args, **kwargs)

        return _wrapper

    def print_args(self, args, log):

        for key, val in args:
            if key in self.ignore or len(repr(val)) > 500:
                continue
            log.info("{}: {!r}".format(key, val))


def Log(message=None, ignore=()):
    """Decorates a function so that its arguments are logged and outputted."""

    if callable(message):
        log = _Log()
        return log(message)
    else:
        def _wrapper(f):
            log = _Log(message, ignore)
            return log(f)

        return _wrapper
