import sys

from ppfd.app.main import main

sys.exit(main())
