"""binary witness records, shared enumerations and the arrangement file format"""
