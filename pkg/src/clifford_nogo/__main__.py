import sys

from clifford_nogo.cli import main

sys.exit(main())
