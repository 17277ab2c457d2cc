from __future__ import absolute_import
from __future__ import division
from __future__ import unicode_literals
from __future__ import print_function

from cauchyid import management

if __name__ == "__main__":
    management.execute_from_command_line()
