# @Time   : 2026/10/17
# @Author : OMLBoxTeam

import sys

from omlbox.quick_start import cli_main

if __name__ == '__main__':
    sys.exit(cli_main())
