from __future__ import absolute_import

from .suite import Suite
