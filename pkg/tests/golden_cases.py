"""Golden CLI cases shared by the CLI tests and the acceptance suite."""

import pathlib
import subprocess
import sys

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "pants_split_pair": ["pants", "2,-2,0"],
    "pants_zero3": ["pants", "0,0,0"],
    "pants_s3": ["pants", "1,1,0"],
    "pants_seifert": ["pants", "2,3,5"],
    "pants_lens": ["pants", "1,5,0"],
    "dbc_trefoil": ["dbc", "1 2 1 2"],
    "dbc_sum": ["dbc", "1 1 2 2"],
    "dbc_disk": ["dbc", "", "--strands", "1"],
    "dbc_opaque": ["dbc", "1 2 3"],
    "plumb_hopf": ["plumb", "annulus,annulus"],
    "plumb_disk_pants": ["plumb", "disk,pants"],
    "plumb_pants_pants": ["plumb", "pants,pants"],
    "snf_example": ["snf", "[[-6,2],[-3,0]]"],
    "snf_zero": ["snf", "[[0,0],[0,0]]"],
    "snf_three": ["snf", "[[3]]"],
    "braid_info_hopf_plus": ["braid-info", "1 1 -2"],
    "braid_info_trefoil": ["braid-info", "1 2 1 2"],
}


def run_cli(argv):
    return subprocess.run([sys.executable, "-m", "bookgenus"] + argv,
                          capture_output=True)
