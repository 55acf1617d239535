from cyclo.cli import main

main()
