from omlbox.quick_start.quick_start import run_omlbox, dump_json, format_text
from omlbox.quick_start.cli import cli_main
