class ForgeError(Exception):
    def __init__(self, kind, detail, exit_code):
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail
        self.exit_code = exit_code
