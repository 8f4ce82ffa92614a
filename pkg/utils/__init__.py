"""Utils package for the fcwf toolkit"""
