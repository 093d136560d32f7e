from .script import Script
from .command import Command
