import sys

from twolift._cli import main

sys.exit(main())
