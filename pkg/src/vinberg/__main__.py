from vinberg.cli import main

main()
