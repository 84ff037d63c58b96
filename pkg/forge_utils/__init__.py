#!/usr/bin/env python3
# www.jrodal.com
