from polyaxial.main import main

raise SystemExit(main())
