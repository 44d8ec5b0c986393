from moravacoh.cli import main
import sys

sys.exit(main())
