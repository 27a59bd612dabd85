class Decorator(object):
    def __init__(self, simulator):
        self.simulator = simulator
